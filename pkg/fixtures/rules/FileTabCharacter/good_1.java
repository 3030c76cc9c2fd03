class Sample
{
    int x = 1;
}
