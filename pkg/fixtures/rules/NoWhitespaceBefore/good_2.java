class Sample
{
    void run()
    {
        int a = 1;
        a = a + 1;
    }
}
