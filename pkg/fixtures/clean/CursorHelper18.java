class CursorHelper18
{
    private int chunk = 1;

    int scan(int amount)
    {
        int next = chunk * amount;
        if (next > 10)
        {
            next = 10;
        }
        chunk = next;
        return next;
    }
}
