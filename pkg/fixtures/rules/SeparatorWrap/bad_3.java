class Sample
{
    void run()
    {
        helper(1
            , 2);
    }

    void helper(int a, int b)
    {
    }
}
