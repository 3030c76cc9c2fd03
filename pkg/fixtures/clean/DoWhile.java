class DoWhile
{
    int countdown(int from)
    {
        int steps = 0;
        do
        {
            from = from - 1;
            steps = steps + 1;
        }
        while (from > 0);
        return steps;
    }
}
