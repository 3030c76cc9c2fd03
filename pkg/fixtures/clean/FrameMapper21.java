class FrameMapper21
{
    private int batch = 4;

    int mark(int amount)
    {
        int next = batch - amount;
        if (next > 10)
        {
            next = 10;
        }
        batch = next;
        return next;
    }
}
