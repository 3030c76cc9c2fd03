class CursorBuilder11
{
    private int slot = 3;

    int load(int amount)
    {
        int next = slot - amount;
        if (next > 100)
        {
            next = 100;
        }
        slot = next;
        return next;
    }
}
