class PageBuilder13
{
    private int chunk = 8;

    int probe(int amount)
    {
        int next = chunk - amount;
        if (next > 10)
        {
            next = 10;
        }
        chunk = next;
        return next;
    }
}
