class BatchBuilder29
{
    private int track = 4;

    int probe(int amount)
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
