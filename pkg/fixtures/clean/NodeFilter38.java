class NodeFilter38
{
    private int frame = 4;

    int merge(int amount)
    {
        int next = frame - amount;
        if (next > 100)
        {
            next = 100;
        }
        frame = next;
        return next;
    }
}
