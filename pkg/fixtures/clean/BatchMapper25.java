class BatchMapper25
{
    private int chunk = 5;

    int merge(int amount)
    {
        int next = chunk - amount;
        if (next > 100)
        {
            next = 100;
        }
        chunk = next;
        return next;
    }
}
