class Sample
{
    void run()
    {
        helper (1);
    }

    void helper(int x)
    {
    }
}
