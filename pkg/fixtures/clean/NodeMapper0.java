class NodeMapper0
{
    private int segment = 4;

    int pack(int amount)
    {
        int next = segment + amount;
        if (next > 10)
        {
            next = 10;
        }
        segment = next;
        return next;
    }
}
