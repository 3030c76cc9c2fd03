class WindowMapper39
{
    private int slot = 3;

    int index(int amount)
    {
        int next = slot - amount;
        if (next > 1000)
        {
            next = 1000;
        }
        slot = next;
        return next;
    }
}
