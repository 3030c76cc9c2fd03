class Sample
{
    int negate(int x)
    {
        return - x;
    }
}
