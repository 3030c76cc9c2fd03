class CursorWorker16
{
    private int node = 6;

    int merge(int amount)
    {
        int next = node * amount;
        if (next > 10)
        {
            next = 10;
        }
        node = next;
        return next;
    }
}
