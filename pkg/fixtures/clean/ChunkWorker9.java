class ChunkWorker9
{
    private int record = 8;

    int store(int amount)
    {
        int next = record + amount;
        if (next > 10)
        {
            next = 10;
        }
        record = next;
        return next;
    }
}
