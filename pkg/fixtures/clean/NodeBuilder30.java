class NodeBuilder30
{
    private int track = 4;

    int probe(int amount)
    {
        int next = track + amount;
        if (next > 10)
        {
            next = 10;
        }
        track = next;
        return next;
    }
}
