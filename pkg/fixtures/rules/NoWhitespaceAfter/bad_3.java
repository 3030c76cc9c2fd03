class Sample
{
    int length(String s)
    {
        return s . length();
    }
}
