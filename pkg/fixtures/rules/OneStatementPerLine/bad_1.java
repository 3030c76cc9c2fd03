class Sample
{
    void run()
    {
        int a = 1; int b = 2;
        a = a + b;
    }
}
