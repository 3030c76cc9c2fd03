class SegmentHelper36
{
    private int lane = 3;

    int rotate(int amount)
    {
        int next = lane - amount;
        if (next > 100)
        {
            next = 100;
        }
        lane = next;
        return next;
    }
}
