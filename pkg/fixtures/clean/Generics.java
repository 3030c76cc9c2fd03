class Generics
{
    java.util.Map<String, java.util.List<Integer>> index;

    <T extends Comparable<T>> T max(java.util.List<? extends T> items, T seed)
    {
        T best = seed;
        for (T item : items)
        {
            if (item.compareTo(best) > 0)
            {
                best = item;
            }
        }
        return best;
    }
}
