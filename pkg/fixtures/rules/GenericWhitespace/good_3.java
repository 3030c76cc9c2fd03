class Sample
{
    boolean less(int a, int b)
    {
        return a < b || b > a;
    }
}
