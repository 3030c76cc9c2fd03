class Sample
{
    void run()
    {
        int a = 1; int b = 2; int c = 3;
        a = a + b + c;
    }
}
