class BatchBuilder3
{
    private int lane = 3;

    int probe(int amount)
    {
        int next = lane + amount;
        if (next > 1000)
        {
            next = 1000;
        }
        lane = next;
        return next;
    }
}
