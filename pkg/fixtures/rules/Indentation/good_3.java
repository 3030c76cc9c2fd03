class Sample
{
    void run()
    {
        if (true)
        {
            int x = 1;
        }
    }
}
