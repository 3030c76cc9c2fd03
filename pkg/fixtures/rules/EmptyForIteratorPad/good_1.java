class Sample
{
    void run(int n)
    {
        for (int i = 0; i < n;)
        {
            n = n - 1;
        }
    }
}
