// storage helper for record records
class RecordTable18
{
    @Capacity(limit=64, grow=2)
    private int trackSize = 5;

    private long batchMask = -1;

    public int storeTrack( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + trackSize;
    }

    public long countBatch( boolean dense, int count )
    {
        long mask = batchMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 4;
    }

    public int scanAll( int[] values, int limit )
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

    public int relay( Visitor tracker, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        tracker.visit( picked, rounds );
        refresh( tracker, true );
        this.trackSize = picked;
        return this.trackSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.trackSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="record", retries=3)
    public String describe( String name, double ratio )
    {
        double scaled = (double) trackSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
