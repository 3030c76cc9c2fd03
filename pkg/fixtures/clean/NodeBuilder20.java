class NodeBuilder20
{
    private int chunk = 6;

    int store(int amount)
    {
        int next = chunk + amount;
        if (next > 10)
        {
            next = 10;
        }
        chunk = next;
        return next;
    }
}
