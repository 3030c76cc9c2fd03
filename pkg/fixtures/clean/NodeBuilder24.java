class NodeBuilder24
{
    private int bucket = 6;

    int count(int amount)
    {
        int next = bucket * amount;
        if (next > 100)
        {
            next = 100;
        }
        bucket = next;
        return next;
    }
}
