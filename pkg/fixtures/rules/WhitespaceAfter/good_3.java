class Sample
{
    void run()
    {
        for (;;)
        {
            break;
        }
    }
}
