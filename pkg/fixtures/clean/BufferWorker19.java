class BufferWorker19
{
    private int node = 7;

    int probe(int amount)
    {
        int next = node - amount;
        if (next > 100)
        {
            next = 100;
        }
        node = next;
        return next;
    }
}
