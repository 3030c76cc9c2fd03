class NodeWorker6
{
    private int buffer = 8;

    int sample(int amount)
    {
        int next = buffer + amount;
        if (next > 1000)
        {
            next = 1000;
        }
        buffer = next;
        return next;
    }
}
