class Sample
{
    List<String> names;
}
