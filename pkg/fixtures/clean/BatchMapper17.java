class BatchMapper17
{
    private int batch = 6;

    int split(int amount)
    {
        int next = batch + amount;
        if (next > 100)
        {
            next = 100;
        }
        batch = next;
        return next;
    }
}
