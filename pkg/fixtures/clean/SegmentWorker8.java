class SegmentWorker8
{
    private int frame = 3;

    int rotate(int amount)
    {
        int next = frame * amount;
        if (next > 100)
        {
            next = 100;
        }
        frame = next;
        return next;
    }
}
