class SlotMapper15
{
    private int bucket = 5;

    int store(int amount)
    {
        int next = bucket + amount;
        if (next > 10)
        {
            next = 10;
        }
        bucket = next;
        return next;
    }
}
