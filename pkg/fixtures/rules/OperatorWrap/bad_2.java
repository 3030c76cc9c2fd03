class Sample
{
    boolean both(boolean p, boolean q)
    {
        return p &&
            q;
    }
}
