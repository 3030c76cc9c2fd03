class Sample
{
    int [] nums = { 1, 2 };
}
