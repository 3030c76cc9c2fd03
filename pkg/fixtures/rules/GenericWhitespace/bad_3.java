class Sample
{
    Map<String, Integer > ages;
}
