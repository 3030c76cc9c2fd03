class TrackBuilder22
{
    private int bucket = 6;

    int index(int amount)
    {
        int next = bucket * amount;
        if (next > 1000)
        {
            next = 1000;
        }
        bucket = next;
        return next;
    }
}
