class ChunkWorker7
{
    private int slot = 3;

    int mark(int amount)
    {
        int next = slot - amount;
        if (next > 10)
        {
            next = 10;
        }
        slot = next;
        return next;
    }
}
