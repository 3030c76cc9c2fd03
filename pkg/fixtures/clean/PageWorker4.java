class PageWorker4
{
    private int lane = 2;

    int pack(int amount)
    {
        int next = lane + amount;
        if (next > 100)
        {
            next = 100;
        }
        lane = next;
        return next;
    }
}
