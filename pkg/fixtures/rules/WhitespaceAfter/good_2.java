class Sample
{
    int narrow(long wide)
    {
        return (int) wide;
    }
}
