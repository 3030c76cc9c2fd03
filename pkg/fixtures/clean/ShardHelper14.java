class ShardHelper14
{
    private int cursor = 3;

    int trim(int amount)
    {
        int next = cursor * amount;
        if (next > 1000)
        {
            next = 1000;
        }
        cursor = next;
        return next;
    }
}
