class Sample
{
    void run(int x)
    {
        x = x + 1;
        x = x * 2;
    }
}
