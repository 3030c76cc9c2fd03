class Sample
{
    int run(boolean p)
    {
        if (p)
        {
            return 1;
        }else
        {
            return 2;
        }
    }
}
