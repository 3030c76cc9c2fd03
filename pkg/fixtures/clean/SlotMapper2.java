class SlotMapper2
{
    private int segment = 4;

    int probe(int amount)
    {
        int next = segment * amount;
        if (next > 1000)
        {
            next = 1000;
        }
        segment = next;
        return next;
    }
}
