class NodeFilter26
{
    private int cursor = 8;

    int scan(int amount)
    {
        int next = cursor * amount;
        if (next > 100)
        {
            next = 100;
        }
        cursor = next;
        return next;
    }
}
