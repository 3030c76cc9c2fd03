class CursorHelper1
{
    private int window = 2;

    int trim(int amount)
    {
        int next = window * amount;
        if (next > 100)
        {
            next = 100;
        }
        window = next;
        return next;
    }
}
