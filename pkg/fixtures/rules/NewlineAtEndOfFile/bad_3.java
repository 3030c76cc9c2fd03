class Sample
{
    int y = 2;
}   