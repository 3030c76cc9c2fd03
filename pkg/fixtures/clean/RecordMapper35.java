class RecordMapper35
{
    private int window = 5;

    int flush(int amount)
    {
        int next = window * amount;
        if (next > 1000)
        {
            next = 1000;
        }
        window = next;
        return next;
    }
}
