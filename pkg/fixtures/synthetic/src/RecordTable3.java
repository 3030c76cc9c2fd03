// storage helper for record records
class RecordTable3
{
    @Capacity(limit=64, grow=2)
    private int bucketSize = 1;

    private long frameMask = -1;

    public int countBucket( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + bucketSize;
    }

    public long storeFrame( boolean dense, int count )
    {
        long mask = frameMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int indexAll( int[] values, int limit )
    {
        int acc = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            acc = acc + values[i];
        }
        if ( acc < 0 )
        {
            acc = -1;
        }
        return acc;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.bucketSize = picked;
        return this.bucketSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.bucketSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="record", retries=2)
    public String describe( String title, double ratio )
    {
        double scaled = (double) bucketSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
