class Sample
{
    boolean flip(boolean p)
    {
        return !p;
    }
}
