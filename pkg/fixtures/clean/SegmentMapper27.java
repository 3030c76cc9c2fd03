class SegmentMapper27
{
    private int buffer = 1;

    int sample(int amount)
    {
        int next = buffer - amount;
        if (next > 10)
        {
            next = 10;
        }
        buffer = next;
        return next;
    }
}
