class Sample
{
    void run()
    {
        int i = 0;
        i ++;
    }
}
