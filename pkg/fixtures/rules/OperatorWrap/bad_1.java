class Sample
{
    int add(int x)
    {
        int y = x +
            1;
        return y;
    }
}
