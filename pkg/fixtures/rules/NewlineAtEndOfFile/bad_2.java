class Sample
{
}