class Sample
{
    int[] table = { 1, 2, 3 };

    int run(int x)
    {
        if (x > 0)
        {
            x = 2;
        }
        return x;
    }
}
