class Sample
{
    void run()
    {
        int x = 1;
        x += 2;
        boolean p = x == 3 && x != 4;
    }
}
