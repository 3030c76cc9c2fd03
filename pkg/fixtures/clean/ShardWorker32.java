class ShardWorker32
{
    private int window = 8;

    int trim(int amount)
    {
        int next = window - amount;
        if (next > 1000)
        {
            next = 1000;
        }
        window = next;
        return next;
    }
}
