class SegmentWorker23
{
    private int node = 8;

    int scan(int amount)
    {
        int next = node + amount;
        if (next > 100)
        {
            next = 100;
        }
        node = next;
        return next;
    }
}
