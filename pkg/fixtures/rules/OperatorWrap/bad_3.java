class Sample
{
    boolean same(int a, int b)
    {
        return a ==
            b;
    }
}
