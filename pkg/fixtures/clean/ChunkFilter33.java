class ChunkFilter33
{
    private int track = 5;

    int pack(int amount)
    {
        int next = track * amount;
        if (next > 1000)
        {
            next = 1000;
        }
        track = next;
        return next;
    }
}
