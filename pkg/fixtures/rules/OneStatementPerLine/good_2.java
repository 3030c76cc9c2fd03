class Sample
{
    void run(int n)
    {
        for (int i = 0; i < n; i++)
        {
            n = n - 1;
        }
    }
}
