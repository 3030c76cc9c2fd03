class Sample
{
    void run(int x)
    {
    }
}
