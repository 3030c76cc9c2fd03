class Sample
{
    @Meta( padding = 1 )
    void tagged()
    {
        run();
    }

    void run()
    {
    }
}
