class Sample
{
    int run(int x)
    {
        if (x > 0) {
            x = 2;
        }
        return x;
    }
}
