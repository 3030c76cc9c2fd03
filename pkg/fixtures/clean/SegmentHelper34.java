class SegmentHelper34
{
    private int bucket = 1;

    int rotate(int amount)
    {
        int next = bucket + amount;
        if (next > 100)
        {
            next = 100;
        }
        bucket = next;
        return next;
    }
}
