class WindowMapper37
{
    private int buffer = 7;

    int merge(int amount)
    {
        int next = buffer - amount;
        if (next > 10)
        {
            next = 10;
        }
        buffer = next;
        return next;
    }
}
