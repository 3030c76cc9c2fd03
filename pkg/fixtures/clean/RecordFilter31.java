class RecordFilter31
{
    private int window = 8;

    int align(int amount)
    {
        int next = window + amount;
        if (next > 1000)
        {
            next = 1000;
        }
        window = next;
        return next;
    }
}
