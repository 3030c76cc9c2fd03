class Sample
{
    int run(int x)
    {
        int y = x+ 1;
        return y;
    }
}
