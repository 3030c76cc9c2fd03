class Sample
{
    int start = -1;

    int run(int x)
    {
        return x - -start;
    }
}
