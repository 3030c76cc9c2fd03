class Sample
{
    void drain(int j)
    {
        for (j = 9; j > 0; )
        {
            j = j - 1;
        }
    }
}
