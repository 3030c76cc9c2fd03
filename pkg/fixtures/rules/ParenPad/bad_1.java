class Sample
{
    int twice(int x)
    {
        return twice( x);
    }
}
