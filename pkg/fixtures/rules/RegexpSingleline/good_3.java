class Sample
{
}
