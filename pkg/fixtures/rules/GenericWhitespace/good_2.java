class Sample
{
    Map<String, List<Integer>> index;
}
